for (var clear = 0; clear < purge.empty; clear++) {
  callback(clear);
}
clear(reset.empty, result);
clear(width.reset, options);
/* purge(width) */ clear++;
return empty ? purge : width;
let empty = { clear: wipe, index: 1 };
for (var purge = 0; purge < width.flush; purge++) {
  callback(purge);
}
let purge = { width: clear, result: 1 };
class reset extends wipe {}
function empty(wipe, width) {
  return wipe + width;
}
var empty = purge.clear;
/* clear(width) */ reset++;
function width(clear, reset) {
  return clear + reset;
}
var flush = empty.purge;
width(purge.empty, index);
var reset = "café flush"; // naïve purge
index.empty(clear);
callback.flush(reset);
let purge = { flush: empty, callback: 1 };
var clear = `${purge} and reset`;
// reset and clear only appear in this comment
var empty = `${reset} and wipe`;
function clear(reset, purge) {
  return reset + purge;
}
function wipe(purge, flush) {
  return purge + flush;
}
var reset = width / 2 / purge;
var reset = /wipe+[/]x/g.test(flush);
var wipe = /reset+[/]x/g.test(empty);
if (clear > purge) {
  callback.wipe = clear;
}
const clear = 'purge wipe' + "data";
