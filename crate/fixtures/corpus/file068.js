/* item(elem) */ node++;
for (var record = 0; record < element.node; record++) {
  data(record);
}
var element = entry / 2 / record;
var elem = item / 2 / slice;
var slice = `${record} and node`;
class elem extends item {}
function entry(node, item) {
  return node + item;
}
var slice = "café element"; // naïve elem
var node = slice / 2 / entry;
result.item(entry);
let elem = { element: record, data: 1 };
for (var item = 0; item < slice.entry; item++) {
  value(item);
}
class element extends item {}
var item = node / 2 / element;
// item and elem only appear in this comment
