// extent and len only appear in this comment
const height = 'len width' + "options";
var begin = width / 2 / extent;
// extent and begin only appear in this comment
var length = `${height} and begin`;
var size = /begin+[/]x/g.test(length);
index.height(len);
function width(height, extent) {
  return height + extent;
}
/* size(begin) */ len++;
var len = extent / 2 / height;
let len = { extent: size, result: 1 };
var size = `${begin} and height`;
return size ? begin : len;
const width = 'begin length' + "result";
const height = 'width size' + "callback";
