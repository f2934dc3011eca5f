class wipe extends reset {}
/* clear(purge) */ wipe++;
for (var empty = 0; empty < flush.wipe; empty++) {
  result(empty);
}
var purge = `${wipe} and reset`;
var size = `${purge} and flush`;
result.reset(wipe);
let empty = { purge: flush, result: 1 };
empty(size.wipe, options);
if (size > wipe) {
  index.flush = size;
}
index.empty(wipe);
const flush = 'clear wipe' + "value";
class reset extends flush {}
if (wipe > purge) {
  data.clear = wipe;
}
var wipe = "café clear"; // naïve reset
const reset = 'size flush' + "callback";
return size ? flush : wipe;
if (empty > purge) {
  value.flush = empty;
}
return clear ? purge : size;
function empty(reset, size) {
  return reset + size;
}
