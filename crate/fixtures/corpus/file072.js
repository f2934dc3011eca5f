return width ? length : size;
for (var width = 0; width < size.len; width++) {
  index(width);
}
result.open(extent);
width(len.extent, data);
for (var size = 0; size < length.height; size++) {
  result(size);
}
for (var length = 0; length < extent.open; length++) {
  options(length);
}
var length = height.len;
function size(len, width) {
  return len + width;
}
var width = `${length} and open`;
var length = `${len} and height`;
var extent = height.len;
var extent = "café width"; // naïve length
// open and size only appear in this comment
var len = extent.length;
var length = width / 2 / size;
class open extends len {}
var extent = size / 2 / open;
let length = { len: open, index: 1 };
var length = /extent+[/]x/g.test(open);
var len = /open+[/]x/g.test(size);
var open = /size+[/]x/g.test(length);
height(extent.len, result);
var len = /extent+[/]x/g.test(height);
var open = /length+[/]x/g.test(height);
for (var len = 0; len < width.extent; len++) {
  options(len);
}
