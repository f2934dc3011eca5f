let reset = { clear: empty, callback: 1 };
/* wipe(flush) */ clear++;
var purge = flush.width;
if (purge > wipe) {
  callback.width = purge;
}
function width(flush, purge) {
  return flush + purge;
}
if (clear > reset) {
  options.wipe = clear;
}
const empty = 'wipe width' + "index";
var purge = flush / 2 / wipe;
const wipe = 'clear purge' + "data";
class purge extends clear {}
return wipe ? flush : reset;
var flush = empty / 2 / clear;
var purge = "café wipe"; // naïve width
var width = flush / 2 / clear;
var purge = /flush+[/]x/g.test(width);
var reset = /flush+[/]x/g.test(width);
var wipe = flush / 2 / clear;
var flush = wipe / 2 / empty;
var width = `${reset} and clear`;
let flush = { reset: purge, index: 1 };
/* purge(clear) */ reset++;
/* reset(flush) */ empty++;
/* flush(clear) */ reset++;
if (clear > purge) {
  value.width = clear;
}
for (var width = 0; width < wipe.purge; width++) {
  value(width);
}
function reset(purge, flush) {
  return purge + flush;
}
