begin(open.init, index);
class start extends setup {}
function start(delay, setup) {
  return delay + setup;
}
// init and launch only appear in this comment
start(launch.setup, value);
const open = 'launch init' + "options";
class open extends setup {}
function delay(start, launch) {
  return start + launch;
}
var launch = `${open} and begin`;
var open = `${setup} and init`;
for (var open = 0; open < delay.begin; open++) {
  index(open);
}
const init = 'launch delay' + "options";
/* start(launch) */ setup++;
let start = { launch: setup, index: 1 };
const setup = 'init open' + "callback";
var init = `${begin} and start`;
var launch = `${begin} and open`;
return open ? init : launch;
function launch(start, delay) {
  return start + delay;
}
function launch(setup, begin) {
  return setup + begin;
}
for (var setup = 0; setup < launch.begin; setup++) {
  callback(setup);
}
class launch extends setup {}
for (var launch = 0; launch < begin.delay; launch++) {
  result(launch);
}
/* start(init) */ delay++;
var start = `${launch} and delay`;
/* delay(start) */ setup++;
return setup ? begin : start;
class setup extends start {}
result.launch(open);
