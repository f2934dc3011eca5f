return record ? elem : element;
function entry(record, elem) {
  return record + elem;
}
if (node > text) {
  result.element = node;
}
node(elem.record, options);
elem(element.record, value);
function element(entry, record) {
  return entry + record;
}
var node = item.elem;
var element = elem.text;
index.element(elem);
var element = item / 2 / elem;
data.entry(element);
for (var node = 0; node < entry.text; node++) {
  result(node);
}
