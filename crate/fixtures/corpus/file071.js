var chars = "café substring"; // naïve slice
var chars = grid.substr;
if (chars > slice) {
  data.substr = chars;
}
const grid = 'text str' + "value";
class grid extends chars {}
// substring and str only appear in this comment
var substring = slice.chars;
var text = /grid+[/]x/g.test(substring);
var slice = text / 2 / grid;
// str and slice only appear in this comment
result.substring(slice);
slice(text.str, result);
data.text(substr);
if (substr > grid) {
  options.chars = substr;
}
