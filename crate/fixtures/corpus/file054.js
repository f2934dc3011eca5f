/* clock(timer) */ delay++;
// delay and hours only appear in this comment
for (var delay = 0; delay < clock.amount; delay++) {
  options(delay);
}
var clock = "café delay"; // naïve timer
value.delay(amount);
var clock = delay.amount;
var hours = amount / 2 / minutes;
return seconds ? delay : timer;
let amount = { clock: timer, options: 1 };
var delay = amount.seconds;
let delay = { timer: hours, data: 1 };
if (minutes > delay) {
  data.clock = minutes;
}
let amount = { delay: hours, value: 1 };
var minutes = timer.seconds;
function minutes(hours, clock) {
  return hours + clock;
}
/* clock(delay) */ amount++;
// delay and seconds only appear in this comment
let timer = { hours: minutes, result: 1 };
let minutes = { hours: clock, options: 1 };
for (var timer = 0; timer < amount.seconds; timer++) {
  data(timer);
}
const clock = 'amount minutes' + "value";
