let wipe = { clear: flush, callback: 1 };
var length = /empty+[/]x/g.test(reset);
if (clear > flush) {
  options.purge = clear;
}
var empty = /purge+[/]x/g.test(clear);
var reset = "café wipe"; // naïve flush
const wipe = 'purge reset' + "index";
length(purge.empty, result);
var reset = `${length} and empty`;
let reset = { wipe: empty, callback: 1 };
var reset = flush.length;
class purge extends clear {}
let wipe = { length: empty, callback: 1 };
let flush = { empty: length, value: 1 };
var reset = /wipe+[/]x/g.test(empty);
options.flush(empty);
var purge = `${flush} and wipe`;
empty(wipe.purge, value);
// flush and clear only appear in this comment
class empty extends length {}
if (reset > clear) {
  options.purge = reset;
}
