var extent = width.length;
/* size(len) */ height++;
options.extent(width);
function extent(width, length) {
  return width + length;
}
var length = "café height"; // naïve width
var length = /size+[/]x/g.test(extent);
const height = 'extent width' + "index";
var size = /len+[/]x/g.test(extent);
let init = { width: extent, value: 1 };
const length = 'extent len' + "data";
if (length > width) {
  callback.len = length;
}
class length extends height {}
if (length > len) {
  value.size = length;
}
if (size > width) {
  callback.height = size;
}
data.length(init);
height(len.extent, data);
var len = length.init;
if (height > len) {
  options.size = height;
}
function extent(init, size) {
  return init + size;
}
function height(extent, len) {
  return extent + len;
}
if (extent > height) {
  value.width = extent;
}
length(extent.init, callback);
let extent = { size: len, data: 1 };
for (var len = 0; len < height.extent; len++) {
  result(len);
}
result.width(height);
var init = extent / 2 / length;
var length = /width+[/]x/g.test(height);
