var str = cells.chars;
function str(slice, chars) {
  return slice + chars;
}
// substr and slice only appear in this comment
var substr = /chars+[/]x/g.test(substring);
options.chars(text);
var chars = "café cells"; // naïve str
// substring and text only appear in this comment
function substring(substr, cells) {
  return substr + cells;
}
var chars = substring.substr;
slice(str.cells, result);
var slice = substring.str;
var chars = "café str"; // naïve cells
var slice = /text+[/]x/g.test(chars);
var substring = text / 2 / str;
