function width(height, length) {
  return height + length;
}
for (var begin = 0; begin < length.extent; begin++) {
  value(begin);
}
for (var len = 0; len < width.height; len++) {
  callback(len);
}
var size = /width+[/]x/g.test(height);
/* len(extent) */ begin++;
begin(width.length, data);
var width = begin.height;
var extent = `${len} and width`;
var begin = `${width} and size`;
var width = "café len"; // naïve size
if (begin > length) {
  value.height = begin;
}
return extent ? height : width;
const length = 'width height' + "callback";
return len ? height : extent;
const begin = 'width size' + "index";
return size ? extent : begin;
const height = 'extent width' + "result";
index.begin(width);
var width = "café height"; // naïve size
let length = { width: extent, value: 1 };
// width and begin only appear in this comment
class begin extends length {}
class length extends begin {}
var len = "café size"; // naïve begin
for (var height = 0; height < extent.size; height++) {
  data(height);
}
const length = 'height len' + "options";
if (extent > size) {
  callback.len = extent;
}
result.extent(begin);
