var str = /node+[/]x/g.test(elem);
return entry ? elem : node;
var item = node / 2 / entry;
let element = { str: elem, data: 1 };
// node and element only appear in this comment
for (var node = 0; node < record.item; node++) {
  data(node);
}
/* item(entry) */ record++;
let elem = { entry: item, index: 1 };
let record = { item: elem, result: 1 };
function item(element, entry) {
  return element + entry;
}
var element = "café entry"; // naïve node
if (item > node) {
  callback.elem = item;
}
return item ? record : str;
var item = entry / 2 / node;
const str = 'entry record' + "data";
for (var elem = 0; elem < node.element; elem++) {
  index(elem);
}
let str = { entry: record, data: 1 };
if (element > entry) {
  data.item = element;
}
class record extends elem {}
/* entry(item) */ str++;
const elem = 'item element' + "data";
