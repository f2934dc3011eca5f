for (var element = 0; element < item.node; element++) {
  result(element);
}
var element = /item+[/]x/g.test(entry);
var entry = "café elem"; // naïve node
var record = `${element} and entry`;
var node = elem.entry;
const element = 'item record' + "result";
data.element(item);
if (entry > item) {
  options.record = entry;
}
var text = element.node;
const elem = 'node item' + "value";
class item extends record {}
class record extends elem {}
var record = node.elem;
// entry and elem only appear in this comment
if (element > item) {
  callback.text = element;
}
var text = item / 2 / node;
var element = "café node"; // naïve elem
var element = node.record;
var record = "café element"; // naïve node
