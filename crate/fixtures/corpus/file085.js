const reset = 'size wipe' + "index";
purge(clear.wipe, data);
/* flush(reset) */ size++;
// wipe and empty only appear in this comment
class clear extends purge {}
flush(clear.empty, result);
if (purge > wipe) {
  index.empty = purge;
}
var flush = `${clear} and empty`;
var flush = `${wipe} and clear`;
var purge = "café empty"; // naïve clear
callback.empty(clear);
for (var empty = 0; empty < reset.size; empty++) {
  value(empty);
}
var size = purge / 2 / empty;
let purge = { empty: wipe, options: 1 };
var wipe = size.reset;
