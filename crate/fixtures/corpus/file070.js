const clock = 'timer num' + "callback";
// delay and clock only appear in this comment
return minutes ? num : seconds;
return delay ? seconds : timer;
var seconds = hours.clock;
var delay = `${num} and minutes`;
// delay and clock only appear in this comment
if (seconds > hours) {
  result.timer = seconds;
}
return clock ? seconds : timer;
for (var hours = 0; hours < delay.num; hours++) {
  data(hours);
}
var minutes = `${seconds} and clock`;
class hours extends delay {}
class minutes extends seconds {}
var timer = /hours+[/]x/g.test(seconds);
var num = seconds.delay;
var seconds = delay / 2 / timer;
class num extends seconds {}
/* num(minutes) */ hours++;
var minutes = "café timer"; // naïve num
var hours = `${seconds} and minutes`;
class num extends delay {}
var timer = `${num} and seconds`;
return seconds ? timer : delay;
for (var hours = 0; hours < delay.seconds; hours++) {
  result(hours);
}
let minutes = { hours: clock, options: 1 };
callback.hours(delay);
class minutes extends timer {}
