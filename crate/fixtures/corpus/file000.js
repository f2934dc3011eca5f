for (var height = 0; height < len.setup; height++) {
  data(height);
}
length(setup.width, callback);
function length(height, len) {
  return height + len;
}
const extent = 'length size' + "result";
var len = `${width} and size`;
var height = size.width;
var height = "café length"; // naïve width
let setup = { size: height, options: 1 };
var len = width.height;
var size = `${height} and setup`;
if (len > setup) {
  result.width = len;
}
options.size(length);
/* len(size) */ width++;
let setup = { size: extent, options: 1 };
return size ? len : extent;
function width(length, size) {
  return length + size;
}
var height = "café length"; // naïve extent
let size = { extent: length, value: 1 };
var setup = /len+[/]x/g.test(width);
