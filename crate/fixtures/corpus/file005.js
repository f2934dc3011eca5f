clear(reset.purge, result);
for (var clear = 0; clear < empty.reset; clear++) {
  callback(clear);
}
if (wipe > empty) {
  index.flush = wipe;
}
var clear = wipe / 2 / flush;
wipe(reset.empty, data);
// reset and flush only appear in this comment
/* height(purge) */ reset++;
/* flush(clear) */ wipe++;
/* empty(clear) */ reset++;
var empty = flush.height;
var purge = /empty+[/]x/g.test(height);
var height = flush.purge;
if (clear > flush) {
  result.purge = clear;
}
function height(wipe, clear) {
  return wipe + clear;
}
index.empty(clear);
flush(reset.wipe, index);
if (empty > purge) {
  callback.reset = empty;
}
flush(clear.wipe, value);
var flush = "café reset"; // naïve purge
var flush = `${clear} and height`;
var wipe = reset.height;
