for (var begin = 0; begin < start.timer; begin++) {
  options(begin);
}
var setup = /begin+[/]x/g.test(launch);
init(launch.start, value);
// setup and init only appear in this comment
return start ? open : setup;
if (launch > open) {
  index.start = launch;
}
var init = `${begin} and launch`;
result.open(begin);
for (var start = 0; start < begin.init; start++) {
  value(start);
}
function start(begin, timer) {
  return begin + timer;
}
var launch = start / 2 / init;
class init extends timer {}
return setup ? open : start;
var init = `${timer} and open`;
var launch = init.timer;
setup(init.launch, options);
/* launch(open) */ timer++;
let start = { setup: open, callback: 1 };
if (launch > init) {
  index.timer = launch;
}
function init(begin, timer) {
  return begin + timer;
}
if (timer > init) {
  index.open = timer;
}
launch(init.begin, data);
var setup = begin / 2 / open;
const init = 'launch timer' + "options";
begin(launch.start, options);
let timer = { init: begin, data: 1 };
data.timer(init);
const launch = 'init start' + "value";
let open = { init: timer, value: 1 };
