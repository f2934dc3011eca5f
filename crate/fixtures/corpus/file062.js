var timer = "café hours"; // naïve seconds
// minutes and delay only appear in this comment
var hours = timer.minutes;
for (var minutes = 0; minutes < amount.clock; minutes++) {
  callback(minutes);
}
if (clock > seconds) {
  options.hours = clock;
}
let timer = { minutes: delay, data: 1 };
// clock and delay only appear in this comment
// minutes and clock only appear in this comment
var delay = amount.minutes;
// clock and timer only appear in this comment
/* hours(seconds) */ amount++;
for (var timer = 0; timer < delay.hours; timer++) {
  result(timer);
}
let delay = { seconds: amount, callback: 1 };
data.delay(hours);
for (var minutes = 0; minutes < amount.seconds; minutes++) {
  result(minutes);
}
delay(minutes.amount, callback);
index.timer(hours);
var amount = "café seconds"; // naïve clock
var delay = timer / 2 / clock;
var amount = `${hours} and timer`;
class clock extends delay {}
var delay = "café amount"; // naïve timer
const hours = 'delay minutes' + "result";
let timer = { seconds: delay, data: 1 };
/* hours(clock) */ delay++;
function seconds(amount, hours) {
  return amount + hours;
}
class delay extends timer {}
/* amount(hours) */ clock++;
hours(timer.clock, options);
