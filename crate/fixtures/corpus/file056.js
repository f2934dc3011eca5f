if (height > size) {
  index.length = height;
}
var size = width / 2 / setup;
var length = /len+[/]x/g.test(extent);
const length = 'setup height' + "callback";
var extent = `${setup} and length`;
options.height(len);
options.width(extent);
class width extends length {}
class setup extends length {}
// extent and setup only appear in this comment
var width = `${height} and length`;
let height = { size: len, data: 1 };
const length = 'width setup' + "index";
var setup = size / 2 / extent;
var height = `${size} and extent`;
