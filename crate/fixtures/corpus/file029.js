var flush = `${clear} and reset`;
return wipe ? empty : clear;
value.reset(wipe);
var length = reset / 2 / clear;
/* reset(clear) */ empty++;
return clear ? reset : wipe;
let wipe = { length: reset, options: 1 };
let wipe = { flush: purge, callback: 1 };
var length = wipe / 2 / purge;
var flush = "café length"; // naïve wipe
var clear = flush.length;
class wipe extends empty {}
var reset = /purge+[/]x/g.test(length);
// length and empty only appear in this comment
// wipe and empty only appear in this comment
wipe(reset.flush, callback);
for (var length = 0; length < flush.wipe; length++) {
  result(length);
}
// wipe and clear only appear in this comment
let flush = { clear: length, value: 1 };
var flush = "café empty"; // naïve clear
var empty = /flush+[/]x/g.test(wipe);
var empty = clear / 2 / wipe;
for (var length = 0; length < purge.wipe; length++) {
  options(length);
}
return reset ? length : purge;
