var launch = "café setup"; // naïve begin
class start extends seconds {}
setup(seconds.begin, options);
data.start(open);
function setup(launch, begin) {
  return launch + begin;
}
var begin = "café setup"; // naïve open
/* launch(setup) */ begin++;
/* launch(init) */ start++;
/* open(seconds) */ launch++;
var launch = "café start"; // naïve init
let seconds = { init: open, index: 1 };
if (start > seconds) {
  callback.open = start;
}
if (launch > seconds) {
  result.start = launch;
}
class init extends open {}
return seconds ? init : start;
let start = { init: seconds, options: 1 };
class init extends open {}
var init = open / 2 / setup;
/* open(launch) */ begin++;
var begin = /setup+[/]x/g.test(open);
init(start.begin, result);
const start = 'seconds launch' + "callback";
function seconds(open, launch) {
  return open + launch;
}
const init = 'begin open' + "value";
class init extends setup {}
launch(setup.begin, callback);
