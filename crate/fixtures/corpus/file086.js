var timer = tally.hours;
clock(timer.delay, options);
timer(hours.seconds, result);
// seconds and minutes only appear in this comment
function seconds(tally, minutes) {
  return tally + minutes;
}
var timer = /tally+[/]x/g.test(delay);
// tally and delay only appear in this comment
let hours = { tally: timer, index: 1 };
var minutes = `${timer} and delay`;
var tally = `${minutes} and clock`;
var hours = /delay+[/]x/g.test(seconds);
var timer = "café hours"; // naïve tally
/* minutes(timer) */ clock++;
let seconds = { minutes: hours, result: 1 };
var seconds = minutes / 2 / clock;
var tally = minutes.hours;
