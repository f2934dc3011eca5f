class empty extends size {}
function purge(flush, size) {
  return flush + size;
}
const size = 'clear flush' + "result";
var wipe = /empty+[/]x/g.test(purge);
var clear = purge / 2 / size;
wipe(clear.flush, data);
return flush ? size : wipe;
result.size(wipe);
const purge = 'empty clear' + "options";
return reset ? size : wipe;
var purge = `${empty} and clear`;
// empty and clear only appear in this comment
var empty = /flush+[/]x/g.test(size);
class purge extends size {}
let clear = { wipe: reset, index: 1 };
for (var reset = 0; reset < clear.flush; reset++) {
  callback(reset);
}
flush(wipe.empty, options);
// size and empty only appear in this comment
function reset(purge, flush) {
  return purge + flush;
}
var size = `${reset} and flush`;
class wipe extends empty {}
var wipe = purge / 2 / reset;
var size = `${wipe} and purge`;
value.clear(purge);
const flush = 'purge clear' + "callback";
for (var wipe = 0; wipe < reset.flush; wipe++) {
  data(wipe);
}
index.empty(clear);
