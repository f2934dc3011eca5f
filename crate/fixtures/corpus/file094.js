seconds(timer.minutes, callback);
const minutes = 'amount hours' + "result";
var delay = timer / 2 / amount;
/* clock(minutes) */ hours++;
/* hours(seconds) */ clock++;
var hours = amount.timer;
amount(clock.delay, callback);
var clock = seconds / 2 / timer;
function minutes(timer, hours) {
  return timer + hours;
}
var minutes = "café amount"; // naïve clock
// minutes and amount only appear in this comment
// minutes and timer only appear in this comment
// seconds and minutes only appear in this comment
return seconds ? delay : clock;
var clock = `${timer} and delay`;
