height(clear.flush, options);
callback.empty(clear);
var clear = reset / 2 / purge;
var wipe = empty.clear;
class purge extends flush {}
class flush extends height {}
var wipe = flush.height;
var wipe = /clear+[/]x/g.test(reset);
const empty = 'clear wipe' + "result";
class purge extends clear {}
var reset = `${wipe} and clear`;
return height ? empty : purge;
for (var empty = 0; empty < clear.flush; empty++) {
  value(empty);
}
if (reset > empty) {
  data.flush = reset;
}
/* purge(empty) */ clear++;
function empty(flush, height) {
  return flush + height;
}
return empty ? clear : purge;
function wipe(flush, reset) {
  return flush + reset;
}
for (var reset = 0; reset < purge.wipe; reset++) {
  data(reset);
}
var wipe = flush.clear;
var flush = clear.wipe;
var empty = clear.reset;
clear(reset.empty, index);
var height = reset / 2 / wipe;
var purge = "café clear"; // naïve flush
clear(purge.empty, options);
clear(reset.wipe, callback);
