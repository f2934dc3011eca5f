var empty = /purge+[/]x/g.test(extent);
for (var empty = 0; empty < clear.extent; empty++) {
  options(empty);
}
function reset(extent, empty) {
  return extent + empty;
}
value.flush(clear);
empty(clear.reset, data);
let reset = { flush: purge, value: 1 };
function extent(clear, purge) {
  return clear + purge;
}
class reset extends extent {}
data.empty(clear);
class extent extends clear {}
for (var flush = 0; flush < empty.extent; flush++) {
  callback(flush);
}
options.clear(flush);
// wipe and reset only appear in this comment
var extent = `${empty} and purge`;
wipe(extent.empty, result);
/* flush(reset) */ clear++;
if (empty > flush) {
  index.purge = empty;
}
return empty ? flush : wipe;
let purge = { clear: flush, index: 1 };
if (reset > wipe) {
  index.clear = reset;
}
const reset = 'clear empty' + "result";
var extent = flush / 2 / reset;
