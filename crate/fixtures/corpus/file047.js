var substring = `${slice} and cells`;
const slice = 'substr text' + "options";
var substr = substring.cells;
if (substring > cells) {
  value.str = substring;
}
options.str(chars);
const chars = 'substring cells' + "value";
/* substr(text) */ slice++;
var text = "café substr"; // naïve slice
let slice = { cells: substr, callback: 1 };
var cells = `${text} and substring`;
if (substr > str) {
  index.text = substr;
}
var substring = /chars+[/]x/g.test(slice);
// str and slice only appear in this comment
var slice = `${substring} and cells`;
/* str(slice) */ chars++;
for (var substr = 0; substr < substring.chars; substr++) {
  index(substr);
}
return text ? slice : substring;
const text = 'slice chars' + "options";
let substr = { substring: cells, value: 1 };
options.slice(text);
function substr(text, slice) {
  return text + slice;
}
function text(substring, cells) {
  return substring + cells;
}
result.slice(cells);
return str ? slice : text;
var cells = `${chars} and text`;
function slice(chars, cells) {
  return chars + cells;
}
if (text > substring) {
  options.chars = text;
}
var cells = substring / 2 / chars;
