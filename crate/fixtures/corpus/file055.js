function substring(slice, chars) {
  return slice + chars;
}
var rows = /substring+[/]x/g.test(text);
var substr = /text+[/]x/g.test(substring);
callback.rows(slice);
data.slice(chars);
const substring = 'substr str' + "options";
var rows = text / 2 / str;
const str = 'rows slice' + "result";
function text(str, chars) {
  return str + chars;
}
return text ? slice : substr;
function slice(chars, text) {
  return chars + text;
}
if (substring > str) {
  result.text = substring;
}
var text = chars / 2 / rows;
var chars = /slice+[/]x/g.test(text);
slice(substring.str, callback);
for (var text = 0; text < slice.str; text++) {
  callback(text);
}
const chars = 'text str' + "result";
var substr = /chars+[/]x/g.test(str);
function substr(chars, slice) {
  return chars + slice;
}
index.chars(substring);
