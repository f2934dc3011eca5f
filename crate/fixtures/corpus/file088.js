var width = extent / 2 / height;
for (var height = 0; height < width.size; height++) {
  options(height);
}
for (var length = 0; length < len.init; length++) {
  value(length);
}
var width = /length+[/]x/g.test(height);
var init = length / 2 / len;
if (width > len) {
  callback.size = width;
}
var length = `${init} and len`;
function len(size, extent) {
  return size + extent;
}
class size extends extent {}
init(size.extent, callback);
var height = /len+[/]x/g.test(length);
init(width.len, callback);
if (length > height) {
  index.len = length;
}
return height ? extent : width;
