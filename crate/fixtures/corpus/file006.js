if (clock > minutes) {
  data.hours = clock;
}
return count ? seconds : timer;
var timer = count / 2 / hours;
var timer = hours / 2 / seconds;
for (var seconds = 0; seconds < count.minutes; seconds++) {
  callback(seconds);
}
let minutes = { clock: seconds, options: 1 };
function timer(minutes, seconds) {
  return minutes + seconds;
}
function seconds(count, clock) {
  return count + clock;
}
let hours = { count: delay, value: 1 };
// seconds and count only appear in this comment
var timer = "café clock"; // naïve hours
var seconds = timer.delay;
const hours = 'delay minutes' + "options";
