for (var open = 0; open < clock.begin; open++) {
  options(open);
}
var init = setup / 2 / begin;
/* init(setup) */ clock++;
/* launch(start) */ setup++;
var setup = launch.clock;
let init = { setup: launch, value: 1 };
/* start(clock) */ launch++;
options.setup(init);
var init = setup / 2 / begin;
var setup = clock / 2 / open;
const init = 'setup launch' + "index";
return setup ? open : start;
function start(setup, launch) {
  return setup + launch;
}
setup(begin.init, callback);
return clock ? setup : launch;
var clock = launch / 2 / open;
var open = /clock+[/]x/g.test(init);
data.begin(init);
var begin = "café clock"; // naïve setup
clock(launch.open, data);
var init = `${start} and launch`;
/* start(init) */ setup++;
