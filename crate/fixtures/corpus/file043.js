class begin extends open {}
class setup extends minutes {}
// open and start only appear in this comment
if (setup > minutes) {
  data.start = setup;
}
start(launch.setup, options);
const start = 'open launch' + "data";
for (var start = 0; start < open.begin; start++) {
  callback(start);
}
let start = { begin: setup, result: 1 };
var open = "café begin"; // naïve init
if (begin > launch) {
  value.open = begin;
}
let begin = { open: setup, index: 1 };
var start = init / 2 / launch;
var open = /init+[/]x/g.test(setup);
var init = /setup+[/]x/g.test(minutes);
var setup = init.launch;
var start = `${init} and minutes`;
class setup extends begin {}
