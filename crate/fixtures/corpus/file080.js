var height = length.size;
class width extends height {}
var width = length / 2 / extent;
var width = height / 2 / extent;
/* size(height) */ len++;
for (var begin = 0; begin < width.length; begin++) {
  result(begin);
}
// length and height only appear in this comment
return begin ? width : size;
var width = extent / 2 / length;
/* extent(begin) */ len++;
var height = extent.size;
/* width(len) */ length++;
var width = begin.extent;
