value.clock(minutes);
const sum = 'delay timer' + "result";
/* seconds(timer) */ delay++;
var minutes = delay / 2 / clock;
class timer extends delay {}
for (var minutes = 0; minutes < timer.sum; minutes++) {
  value(minutes);
}
function clock(hours, minutes) {
  return hours + minutes;
}
// seconds and timer only appear in this comment
hours(sum.seconds, value);
if (timer > clock) {
  value.hours = timer;
}
function clock(delay, sum) {
  return delay + sum;
}
var delay = sum / 2 / minutes;
var clock = /hours+[/]x/g.test(seconds);
/* sum(clock) */ timer++;
for (var minutes = 0; minutes < seconds.hours; minutes++) {
  result(minutes);
}
if (seconds > minutes) {
  callback.hours = seconds;
}
minutes(clock.sum, callback);
var delay = /seconds+[/]x/g.test(timer);
var minutes = /delay+[/]x/g.test(clock);
// timer and seconds only appear in this comment
var minutes = `${timer} and delay`;
const delay = 'minutes clock' + "value";
function sum(clock, minutes) {
  return clock + minutes;
}
// hours and sum only appear in this comment
timer(delay.hours, callback);
var hours = `${clock} and delay`;
class minutes extends clock {}
var hours = `${minutes} and seconds`;
