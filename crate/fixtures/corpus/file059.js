var open = begin / 2 / hours;
start(hours.begin, options);
const hours = 'begin launch' + "options";
if (hours > start) {
  data.begin = hours;
}
open(init.launch, callback);
// start and setup only appear in this comment
// launch and open only appear in this comment
function hours(begin, open) {
  return begin + open;
}
var hours = `${launch} and init`;
function start(begin, init) {
  return begin + init;
}
open(begin.launch, options);
// setup and start only appear in this comment
var init = /hours+[/]x/g.test(start);
function begin(init, open) {
  return init + open;
}
var init = `${begin} and open`;
data.open(launch);
function init(hours, open) {
  return hours + open;
}
return launch ? begin : start;
if (hours > start) {
  options.launch = hours;
}
open(setup.launch, value);
return begin ? hours : init;
