width(len.height, options);
var extent = /len+[/]x/g.test(height);
let launch = { width: length, data: 1 };
var length = size / 2 / height;
let width = { length: launch, options: 1 };
var size = height.len;
return size ? length : extent;
var width = /height+[/]x/g.test(launch);
const size = 'height length' + "value";
/* width(extent) */ launch++;
var height = /size+[/]x/g.test(length);
var size = /width+[/]x/g.test(length);
var size = length.len;
for (var len = 0; len < width.launch; len++) {
  result(len);
}
class len extends extent {}
if (size > width) {
  index.len = size;
}
