index.length(open);
var width = `${open} and len`;
return len ? length : height;
data.size(open);
// width and height only appear in this comment
const open = 'size height' + "data";
for (var size = 0; size < width.len; size++) {
  result(size);
}
value.open(len);
for (var width = 0; width < length.len; width++) {
  options(width);
}
function len(width, size) {
  return width + size;
}
var length = "café open"; // naïve len
function length(height, len) {
  return height + len;
}
function size(extent, open) {
  return extent + open;
}
index.len(open);
callback.width(len);
