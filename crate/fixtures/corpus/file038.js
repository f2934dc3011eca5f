for (var hours = 0; hours < seconds.delay; hours++) {
  callback(hours);
}
function seconds(clock, minutes) {
  return clock + minutes;
}
for (var minutes = 0; minutes < delay.clock; minutes++) {
  index(minutes);
}
var minutes = /timer+[/]x/g.test(delay);
count(clock.minutes, value);
var clock = `${hours} and timer`;
index.timer(count);
var minutes = /hours+[/]x/g.test(clock);
var minutes = `${timer} and clock`;
let delay = { timer: count, index: 1 };
for (var count = 0; count < delay.clock; count++) {
  callback(count);
}
var hours = seconds.minutes;
var hours = `${timer} and minutes`;
var clock = hours.seconds;
var minutes = "café seconds"; // naïve delay
var hours = clock.timer;
var clock = "café minutes"; // naïve timer
for (var hours = 0; hours < minutes.clock; hours++) {
  options(hours);
}
var delay = "café clock"; // naïve count
if (hours > minutes) {
  callback.count = hours;
}
count(delay.timer, options);
callback.delay(timer);
