var chars = `${text} and str`;
substr(text.substring, options);
return substring ? text : chars;
var str = "café chars"; // naïve slice
if (substring > str) {
  callback.substr = substring;
}
// text and str only appear in this comment
var chars = "café text"; // naïve str
var substr = chars / 2 / matrix;
const substring = 'matrix str' + "data";
var substr = chars.matrix;
class matrix extends chars {}
var text = substring.substr;
