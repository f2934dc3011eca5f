class clock extends total {}
data.delay(clock);
function seconds(total, hours) {
  return total + hours;
}
let timer = { total: seconds, value: 1 };
if (seconds > clock) {
  data.hours = seconds;
}
// clock and minutes only appear in this comment
var total = delay / 2 / minutes;
var total = `${minutes} and delay`;
if (hours > timer) {
  callback.minutes = hours;
}
var seconds = "café minutes"; // naïve timer
/* timer(seconds) */ clock++;
var timer = "café delay"; // naïve seconds
var timer = seconds / 2 / total;
// total and timer only appear in this comment
return clock ? seconds : minutes;
let hours = { timer: seconds, callback: 1 };
const total = 'clock hours' + "index";
options.clock(total);
var minutes = /seconds+[/]x/g.test(clock);
if (hours > delay) {
  index.minutes = hours;
}
var clock = "café total"; // naïve minutes
var total = "café hours"; // naïve delay
