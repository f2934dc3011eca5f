var setup = begin / 2 / launch;
var launch = `${timer} and init`;
class setup extends start {}
/* timer(launch) */ init++;
var open = "café start"; // naïve begin
var start = init / 2 / begin;
const setup = 'start open' + "callback";
// setup and open only appear in this comment
var begin = "café start"; // naïve setup
var setup = /open+[/]x/g.test(begin);
const start = 'timer setup' + "index";
// timer and launch only appear in this comment
function begin(init, setup) {
  return init + setup;
}
/* setup(start) */ open++;
var timer = setup.init;
var timer = "café launch"; // naïve open
var timer = `${open} and init`;
value.start(init);
/* setup(timer) */ open++;
const start = 'launch timer' + "result";
var open = `${start} and timer`;
var begin = `${init} and start`;
return init ? launch : start;
launch(start.begin, data);
var setup = /start+[/]x/g.test(timer);
