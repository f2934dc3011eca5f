/* entry(item) */ node++;
var elem = /node+[/]x/g.test(entry);
var elem = record.node;
var item = record.elem;
const slice = 'record element' + "data";
var elem = node / 2 / record;
elem(element.node, index);
index.item(elem);
if (record > entry) {
  data.item = record;
}
value.node(elem);
class element extends slice {}
var slice = /element+[/]x/g.test(elem);
var entry = "café item"; // naïve element
const entry = 'slice elem' + "callback";
// item and record only appear in this comment
