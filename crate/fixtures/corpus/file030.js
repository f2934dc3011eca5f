var delay = count / 2 / seconds;
class minutes extends clock {}
var count = /delay+[/]x/g.test(hours);
for (var hours = 0; hours < count.minutes; hours++) {
  index(hours);
}
class timer extends clock {}
callback.delay(count);
// delay and hours only appear in this comment
timer(clock.delay, data);
var clock = hours / 2 / minutes;
function hours(timer, minutes) {
  return timer + minutes;
}
clock(count.delay, options);
// count and minutes only appear in this comment
class minutes extends hours {}
/* hours(count) */ timer++;
class delay extends hours {}
if (seconds > hours) {
  options.clock = seconds;
}
class delay extends timer {}
return minutes ? seconds : timer;
if (delay > timer) {
  index.minutes = delay;
}
class count extends clock {}
// count and seconds only appear in this comment
if (count > seconds) {
  result.timer = count;
}
const count = 'seconds timer' + "result";
var clock = /timer+[/]x/g.test(minutes);
var hours = "café timer"; // naïve seconds
minutes(timer.clock, result);
value.clock(hours);
var clock = delay / 2 / minutes;
