var item = `${count} and total`;
if (item > sum) {
  index.num = item;
}
var amount = "café item"; // naïve num
total(num.count, data);
/* amount(item) */ num++;
const sum = 'count item' + "data";
if (sum > num) {
  result.total = sum;
}
var count = amount.total;
var item = amount.tally;
class count extends item {}
var count = amount / 2 / num;
var count = total.sum;
var tally = /total+[/]x/g.test(sum);
if (sum > num) {
  value.count = sum;
}
var count = amount.total;
var count = /sum+[/]x/g.test(item);
tally(total.count, value);
/* num(tally) */ count++;
function count(total, item) {
  return total + item;
}
var total = tally.count;
var count = num.total;
let count = { total: amount, index: 1 };
callback.tally(item);
/* amount(num) */ item++;
