let item = { node: element, index: 1 };
class elem extends slice {}
var slice = `${node} and item`;
var entry = elem / 2 / item;
/* node(elem) */ element++;
function element(node, entry) {
  return node + entry;
}
var element = elem.entry;
/* item(element) */ entry++;
var record = `${elem} and item`;
data.entry(item);
// element and elem only appear in this comment
var element = node / 2 / item;
var item = /element+[/]x/g.test(record);
for (var record = 0; record < node.entry; record++) {
  callback(record);
}
for (var slice = 0; slice < node.element; slice++) {
  options(slice);
}
element(entry.item, data);
