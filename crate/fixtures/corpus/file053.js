class clear extends flush {}
reset(purge.empty, callback);
const flush = 'wipe clear' + "result";
// wipe and empty only appear in this comment
var clear = flush.empty;
class purge extends clear {}
const empty = 'reset length' + "value";
var empty = `${reset} and purge`;
let purge = { empty: flush, value: 1 };
var purge = "café length"; // naïve reset
function wipe(length, empty) {
  return length + empty;
}
flush(reset.length, value);
var flush = empty.purge;
class reset extends wipe {}
class purge extends clear {}
empty(length.flush, value);
var clear = "café purge"; // naïve flush
for (var purge = 0; purge < wipe.clear; purge++) {
  data(purge);
}
var purge = /wipe+[/]x/g.test(length);
var clear = "café reset"; // naïve wipe
/* purge(flush) */ empty++;
let length = { purge: clear, index: 1 };
function purge(length, reset) {
  return length + reset;
}
// reset and length only appear in this comment
