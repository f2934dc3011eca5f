const seconds = 'begin setup' + "callback";
// begin and init only appear in this comment
const start = 'open seconds' + "result";
const seconds = 'init begin' + "callback";
class begin extends launch {}
if (start > setup) {
  result.open = start;
}
open(init.setup, index);
var start = /open+[/]x/g.test(launch);
options.launch(init);
var start = launch / 2 / init;
data.launch(begin);
var start = /init+[/]x/g.test(open);
var init = /launch+[/]x/g.test(seconds);
var open = /launch+[/]x/g.test(init);
var seconds = "café setup"; // naïve start
let init = { begin: open, result: 1 };
// seconds and launch only appear in this comment
var seconds = /begin+[/]x/g.test(setup);
return seconds ? open : launch;
