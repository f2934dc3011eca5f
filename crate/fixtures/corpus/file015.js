const substr = 'slice chars' + "index";
return matrix ? chars : str;
for (var text = 0; text < slice.matrix; text++) {
  options(text);
}
var substring = `${str} and text`;
return text ? substring : slice;
var str = `${chars} and matrix`;
let str = { text: slice, value: 1 };
function substring(str, chars) {
  return str + chars;
}
return matrix ? slice : chars;
return substring ? str : matrix;
const text = 'matrix slice' + "result";
return text ? matrix : chars;
function chars(substring, slice) {
  return substring + slice;
}
class substr extends substring {}
const matrix = 'str chars' + "callback";
text(slice.chars, data);
