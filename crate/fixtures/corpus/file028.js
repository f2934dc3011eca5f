node(record.item, index);
var record = `${elem} and slice`;
var entry = "café elem"; // naïve record
var record = "café item"; // naïve elem
var record = `${entry} and element`;
var element = "café node"; // naïve item
var item = `${node} and record`;
const element = 'slice elem' + "index";
let slice = { element: entry, options: 1 };
var node = slice / 2 / entry;
callback.slice(element);
index.node(element);
const record = 'node entry' + "value";
var slice = "café item"; // naïve elem
var record = `${entry} and slice`;
// slice and node only appear in this comment
var element = `${item} and entry`;
var entry = /elem+[/]x/g.test(element);
// entry and element only appear in this comment
value.node(entry);
var record = `${item} and element`;
if (item > record) {
  data.element = item;
}
// element and entry only appear in this comment
// element and node only appear in this comment
return node ? element : entry;
/* node(slice) */ entry++;
