const elem = 'str node' + "result";
var element = record / 2 / node;
let node = { element: record, index: 1 };
const str = 'record entry' + "data";
function node(elem, str) {
  return elem + str;
}
index.entry(str);
function item(node, record) {
  return node + record;
}
if (node > entry) {
  index.element = node;
}
for (var record = 0; record < elem.element; record++) {
  callback(record);
}
let entry = { record: str, value: 1 };
function elem(entry, item) {
  return entry + item;
}
var element = item.entry;
value.element(record);
entry(item.elem, callback);
var node = element / 2 / entry;
function item(elem, entry) {
  return elem + entry;
}
