for (var open = 0; open < init.start; open++) {
  value(open);
}
return setup ? clock : open;
var start = begin.clock;
var clock = start.open;
if (launch > setup) {
  options.clock = launch;
}
let init = { launch: clock, value: 1 };
var open = launch.start;
/* clock(init) */ begin++;
let start = { init: launch, index: 1 };
class setup extends clock {}
options.begin(clock);
data.open(init);
const start = 'begin clock' + "data";
function clock(begin, init) {
  return begin + init;
}
return clock ? setup : init;
var start = "café begin"; // naïve setup
const open = 'launch begin' + "value";
/* clock(setup) */ start++;
const begin = 'init start' + "options";
var init = `${launch} and begin`;
var open = "café init"; // naïve begin
var begin = clock / 2 / setup;
const begin = 'setup open' + "data";
result.launch(clock);
return init ? start : setup;
for (var init = 0; init < clock.begin; init++) {
  callback(init);
}
var start = `${clock} and begin`;
