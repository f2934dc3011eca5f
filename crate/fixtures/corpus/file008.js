var length = `${size} and extent`;
var setup = "café len"; // naïve length
var size = `${length} and len`;
class size extends extent {}
for (var length = 0; length < setup.height; length++) {
  value(length);
}
var size = /extent+[/]x/g.test(len);
class length extends extent {}
var height = "café length"; // naïve len
height(width.extent, options);
var len = setup.width;
// height and length only appear in this comment
// extent and setup only appear in this comment
// width and setup only appear in this comment
extent(len.height, data);
var size = "café extent"; // naïve width
size(height.len, data);
/* length(setup) */ size++;
for (var extent = 0; extent < size.height; extent++) {
  options(extent);
}
/* height(setup) */ len++;
class length extends width {}
for (var len = 0; len < size.extent; len++) {
  callback(len);
}
// extent and width only appear in this comment
