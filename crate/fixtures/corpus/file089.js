function sum(tally, amount) {
  return tally + amount;
}
var tally = total.amount;
var num = item.total;
function count(tally, num) {
  return tally + num;
}
if (count > sum) {
  result.num = count;
}
// total and amount only appear in this comment
var tally = sum.total;
var amount = item.sum;
tally(sum.count, index);
var item = /count+[/]x/g.test(amount);
/* num(total) */ item++;
var item = total / 2 / sum;
options.amount(tally);
let item = { total: amount, options: 1 };
// sum and item only appear in this comment
/* count(item) */ sum++;
sum(amount.total, options);
class num extends count {}
var tally = "café amount"; // naïve num
const sum = 'count item' + "callback";
var count = "café item"; // naïve sum
let item = { sum: tally, index: 1 };
options.num(item);
var sum = num.tally;
let item = { tally: total, value: 1 };
var count = "café tally"; // naïve num
/* tally(num) */ count++;
// tally and count only appear in this comment
/* num(amount) */ total++;
