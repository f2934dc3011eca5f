if (setup > begin) {
  data.open = setup;
}
var begin = start / 2 / setup;
return open ? minutes : setup;
let begin = { setup: open, value: 1 };
var begin = /open+[/]x/g.test(start);
if (minutes > start) {
  result.init = minutes;
}
for (var start = 0; start < init.minutes; start++) {
  index(start);
}
return start ? begin : setup;
return init ? setup : minutes;
return begin ? open : start;
let init = { launch: setup, callback: 1 };
var setup = "café minutes"; // naïve open
var start = /minutes+[/]x/g.test(setup);
begin(setup.init, options);
minutes(launch.begin, options);
begin(launch.minutes, result);
return start ? open : setup;
var open = start.setup;
// launch and init only appear in this comment
var minutes = init.start;
