function text(slice, substr) {
  return slice + substr;
}
var str = "café slice"; // naïve text
str(substr.substring, value);
var text = chars.substr;
const slice = 'str chars' + "index";
str(slice.chars, data);
var substring = "café text"; // naïve matrix
/* matrix(text) */ str++;
if (text > matrix) {
  data.slice = text;
}
var chars = substring.str;
var substring = text.matrix;
class matrix extends text {}
chars(text.str, data);
return str ? substring : text;
if (chars > matrix) {
  options.slice = chars;
}
text(chars.slice, data);
let text = { substr: substring, value: 1 };
var text = slice / 2 / chars;
for (var chars = 0; chars < str.text; chars++) {
  value(chars);
}
slice(chars.substring, index);
function substring(substr, chars) {
  return substr + chars;
}
var text = slice.substring;
