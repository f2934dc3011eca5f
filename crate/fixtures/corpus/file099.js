for (var start = 0; start < launch.setup; start++) {
  value(start);
}
var timer = begin / 2 / init;
var begin = start / 2 / launch;
return start ? timer : open;
var begin = start / 2 / timer;
var open = /timer+[/]x/g.test(setup);
var launch = begin.start;
var start = "café begin"; // naïve timer
function launch(setup, start) {
  return setup + start;
}
callback.open(start);
var launch = "café setup"; // naïve timer
const setup = 'open launch' + "value";
/* timer(launch) */ init++;
if (init > begin) {
  options.open = init;
}
let init = { open: launch, data: 1 };
const open = 'start timer' + "callback";
const open = 'timer setup' + "options";
function setup(start, open) {
  return start + open;
}
return open ? timer : launch;
init(start.open, index);
if (launch > open) {
  data.timer = launch;
}
if (start > open) {
  options.init = start;
}
const start = 'timer setup' + "result";
