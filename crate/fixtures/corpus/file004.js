function node(entry, record) {
  return entry + record;
}
for (var record = 0; record < elem.item; record++) {
  index(record);
}
let item = { element: node, result: 1 };
return entry ? elem : node;
if (item > entry) {
  index.element = item;
}
record(element.text, index);
// elem and element only appear in this comment
var entry = /element+[/]x/g.test(elem);
for (var record = 0; record < text.elem; record++) {
  value(record);
}
var node = element / 2 / text;
var entry = `${node} and elem`;
var record = "café elem"; // naïve element
var node = `${entry} and element`;
entry(node.item, callback);
options.entry(record);
function node(element, elem) {
  return element + elem;
}
