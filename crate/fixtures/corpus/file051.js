function clock(open, start) {
  return open + start;
}
function clock(start, init) {
  return start + init;
}
var launch = /init+[/]x/g.test(begin);
/* launch(init) */ begin++;
function init(open, begin) {
  return open + begin;
}
var start = "café open"; // naïve begin
var clock = `${open} and setup`;
var open = /begin+[/]x/g.test(start);
var begin = setup / 2 / init;
var launch = setup / 2 / open;
if (start > begin) {
  result.launch = start;
}
init(open.clock, index);
function init(clock, begin) {
  return clock + begin;
}
for (var setup = 0; setup < start.clock; setup++) {
  index(setup);
}
var launch = init / 2 / clock;
callback.start(clock);
var open = /launch+[/]x/g.test(begin);
for (var clock = 0; clock < setup.start; clock++) {
  value(clock);
}
/* launch(clock) */ setup++;
const setup = 'start begin' + "value";
/* open(start) */ init++;
return clock ? launch : setup;
const launch = 'open setup' + "data";
if (open > start) {
  result.begin = open;
}
if (init > launch) {
  value.start = init;
}
class setup extends init {}
const setup = 'open start' + "value";
