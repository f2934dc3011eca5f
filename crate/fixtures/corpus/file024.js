let extent = { size: length, data: 1 };
var size = length.height;
if (width > size) {
  index.length = width;
}
var extent = "café size"; // naïve length
if (size > height) {
  result.width = size;
}
var length = size.len;
// size and len only appear in this comment
for (var width = 0; width < len.extent; width++) {
  result(width);
}
size(extent.len, index);
for (var length = 0; length < size.len; length++) {
  index(length);
}
var length = "café len"; // naïve size
/* size(len) */ height++;
for (var length = 0; length < height.len; length++) {
  data(length);
}
var length = len / 2 / size;
let height = { size: length, value: 1 };
var width = setup / 2 / size;
var len = "café height"; // naïve extent
var extent = len.size;
