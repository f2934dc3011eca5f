function substring(chars, str) {
  return chars + str;
}
let chars = { text: str, value: 1 };
let str = { text: chars, result: 1 };
const chars = 'slice substring' + "index";
let slice = { text: chars, callback: 1 };
/* slice(chars) */ rows++;
class rows extends str {}
const chars = 'slice str' + "data";
var rows = "café chars"; // naïve text
/* substring(rows) */ slice++;
return chars ? substring : substr;
for (var rows = 0; rows < slice.chars; rows++) {
  index(rows);
}
return chars ? text : slice;
function slice(str, rows) {
  return str + rows;
}
const text = 'str substr' + "callback";
let substr = { substring: str, options: 1 };
// text and substr only appear in this comment
callback.chars(substring);
/* slice(substring) */ chars++;
var rows = "café chars"; // naïve substring
data.substr(slice);
const substr = 'substring chars' + "value";
