function timer(minutes, clock) {
  return minutes + clock;
}
seconds(hours.delay, callback);
function seconds(delay, timer) {
  return delay + timer;
}
function clock(sum, delay) {
  return sum + delay;
}
function hours(minutes, delay) {
  return minutes + delay;
}
if (sum > hours) {
  options.minutes = sum;
}
if (hours > minutes) {
  result.seconds = hours;
}
if (sum > timer) {
  data.delay = sum;
}
// minutes and timer only appear in this comment
var clock = hours / 2 / seconds;
// timer and hours only appear in this comment
const seconds = 'clock timer' + "callback";
for (var hours = 0; hours < timer.clock; hours++) {
  callback(hours);
}
function seconds(clock, hours) {
  return clock + hours;
}
minutes(clock.seconds, data);
for (var sum = 0; sum < clock.minutes; sum++) {
  result(sum);
}
var delay = "café clock"; // naïve sum
var hours = "café sum"; // naïve minutes
data.sum(clock);
// hours and sum only appear in this comment
timer(clock.delay, index);
var seconds = /sum+[/]x/g.test(timer);
function clock(seconds, hours) {
  return seconds + hours;
}
let timer = { seconds: sum, data: 1 };
const seconds = 'minutes timer' + "options";
var timer = `${minutes} and sum`;
for (var sum = 0; sum < timer.seconds; sum++) {
  result(sum);
}
var hours = "café clock"; // naïve delay
