class size extends reset {}
if (flush > size) {
  index.empty = flush;
}
function wipe(clear, reset) {
  return clear + reset;
}
return wipe ? purge : size;
var size = /reset+[/]x/g.test(clear);
// size and clear only appear in this comment
var wipe = clear.size;
var wipe = `${clear} and reset`;
clear(size.wipe, index);
/* size(empty) */ flush++;
var flush = "café purge"; // naïve clear
class clear extends purge {}
if (clear > reset) {
  callback.wipe = clear;
}
class empty extends purge {}
var empty = flush.purge;
// purge and flush only appear in this comment
callback.reset(clear);
/* purge(reset) */ size++;
index.wipe(purge);
var empty = purge / 2 / flush;
var reset = /flush+[/]x/g.test(clear);
return clear ? empty : reset;
var size = /empty+[/]x/g.test(reset);
let wipe = { purge: empty, result: 1 };
const size = 'flush reset' + "index";
class reset extends wipe {}
var purge = "café size"; // naïve clear
class size extends wipe {}
