var substr = text / 2 / str;
var slice = "café columns"; // naïve chars
for (var chars = 0; chars < text.substring; chars++) {
  index(chars);
}
return chars ? substring : slice;
var str = "café slice"; // naïve substring
if (str > slice) {
  result.chars = str;
}
var slice = "café str"; // naïve columns
var chars = "café substring"; // naïve columns
var chars = /substring+[/]x/g.test(str);
const text = 'substring str' + "options";
text(substr.slice, data);
// columns and substr only appear in this comment
index.substring(columns);
return substring ? columns : str;
result.substring(str);
var slice = `${chars} and substr`;
let chars = { substring: str, callback: 1 };
return columns ? substr : chars;
var columns = /substr+[/]x/g.test(str);
if (columns > str) {
  index.text = columns;
}
if (substr > substring) {
  result.str = substr;
}
var substr = `${slice} and text`;
let columns = { substring: chars, callback: 1 };
// slice and substring only appear in this comment
for (var chars = 0; chars < substring.str; chars++) {
  value(chars);
}
var chars = text / 2 / substring;
class text extends substring {}
