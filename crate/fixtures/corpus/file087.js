// substring and slice only appear in this comment
class str extends substring {}
var chars = `${substr} and str`;
if (str > substr) {
  index.slice = str;
}
var str = substr.chars;
var substring = "café chars"; // naïve cells
/* cells(str) */ slice++;
return chars ? cells : slice;
var chars = cells.str;
let substr = { slice: chars, result: 1 };
var substr = `${cells} and substring`;
cells(str.slice, options);
class cells extends substring {}
// chars and cells only appear in this comment
callback.substr(chars);
function text(cells, substring) {
  return cells + substring;
}
if (substr > str) {
  callback.chars = substr;
}
class cells extends substr {}
var chars = substring.cells;
cells(str.text, data);
