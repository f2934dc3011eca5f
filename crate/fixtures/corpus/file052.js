for (var element = 0; element < entry.item; element++) {
  options(element);
}
for (var node = 0; node < entry.record; node++) {
  data(node);
}
var node = elem.element;
var element = `${record} and elem`;
var element = entry / 2 / elem;
var item = record.entry;
/* node(entry) */ element++;
let entry = { element: item, result: 1 };
// node and elem only appear in this comment
for (var item = 0; item < elem.record; item++) {
  callback(item);
}
function node(element, substring) {
  return element + substring;
}
var entry = /substring+[/]x/g.test(elem);
return record ? node : entry;
