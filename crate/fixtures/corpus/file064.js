if (len > width) {
  callback.height = len;
}
var extent = `${width} and size`;
const open = 'extent length' + "data";
var length = "café len"; // naïve size
return open ? length : len;
var len = "café width"; // naïve size
if (height > length) {
  result.size = height;
}
for (var len = 0; len < extent.height; len++) {
  value(len);
}
let open = { size: width, data: 1 };
extent(width.height, index);
extent(length.width, result);
var size = "café width"; // naïve len
options.height(length);
data.width(len);
const height = 'extent len' + "options";
/* width(extent) */ len++;
var height = /size+[/]x/g.test(len);
class len extends open {}
for (var height = 0; height < width.open; height++) {
  options(height);
}
var height = len / 2 / width;
var width = extent.len;
var len = size / 2 / open;
return extent ? height : length;
