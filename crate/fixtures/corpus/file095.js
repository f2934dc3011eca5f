var substr = "café text"; // naïve cells
function substr(str, chars) {
  return str + chars;
}
var str = "café cells"; // naïve chars
var slice = `${text} and chars`;
let text = { str: cells, data: 1 };
var text = `${cells} and substr`;
// chars and text only appear in this comment
for (var slice = 0; slice < cells.str; slice++) {
  index(slice);
}
var str = text / 2 / chars;
var substr = "café chars"; // naïve substring
if (str > substr) {
  index.text = str;
}
if (cells > substr) {
  callback.substring = cells;
}
// text and cells only appear in this comment
const substring = 'chars substr' + "index";
