var delay = clock / 2 / timer;
for (var tally = 0; tally < hours.minutes; tally++) {
  result(tally);
}
/* seconds(tally) */ minutes++;
let hours = { timer: clock, data: 1 };
var tally = minutes.hours;
var clock = hours.delay;
// seconds and tally only appear in this comment
for (var seconds = 0; seconds < timer.clock; seconds++) {
  value(seconds);
}
var seconds = hours.minutes;
var delay = seconds.minutes;
/* hours(timer) */ seconds++;
var tally = `${clock} and delay`;
return clock ? tally : minutes;
value.timer(seconds);
if (tally > seconds) {
  value.delay = tally;
}
