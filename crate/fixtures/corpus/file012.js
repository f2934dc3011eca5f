item(elem.node, result);
/* elem(entry) */ item++;
for (var chars = 0; chars < record.entry; chars++) {
  index(chars);
}
/* chars(node) */ elem++;
var element = chars.elem;
value.elem(node);
if (chars > node) {
  options.item = chars;
}
/* item(chars) */ entry++;
let chars = { entry: elem, value: 1 };
var chars = elem / 2 / element;
for (var chars = 0; chars < record.elem; chars++) {
  options(chars);
}
var item = "café element"; // naïve node
if (chars > node) {
  value.record = chars;
}
entry(record.node, data);
entry(elem.item, callback);
var elem = /entry+[/]x/g.test(node);
const entry = 'elem element' + "index";
return record ? element : chars;
var record = item.elem;
var element = elem / 2 / node;
const item = 'node entry' + "index";
class record extends item {}
var entry = chars / 2 / elem;
