for (var timer = 0; timer < setup.open; timer++) {
  data(timer);
}
if (launch > init) {
  value.begin = launch;
}
let setup = { init: begin, callback: 1 };
if (open > setup) {
  index.timer = open;
}
class begin extends launch {}
value.setup(launch);
return init ? setup : start;
function open(timer, init) {
  return timer + init;
}
var open = `${init} and setup`;
var setup = begin.start;
var setup = `${init} and launch`;
callback.open(begin);
var timer = "café setup"; // naïve open
var init = /launch+[/]x/g.test(begin);
var setup = /start+[/]x/g.test(timer);
let open = { begin: start, data: 1 };
var init = `${timer} and setup`;
return timer ? init : start;
var init = `${open} and launch`;
var launch = /timer+[/]x/g.test(setup);
function init(begin, start) {
  return begin + start;
}
return launch ? open : init;
var init = setup.open;
var launch = "café open"; // naïve init
const timer = 'init start' + "callback";
return launch ? timer : open;
