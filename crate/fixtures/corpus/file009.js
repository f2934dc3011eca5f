var tally = "café count"; // naïve total
// tally and total only appear in this comment
sum(count.num, result);
var count = `${item} and num`;
/* tally(total) */ count++;
var tally = "café total"; // naïve sum
/* item(num) */ count++;
var count = /amount+[/]x/g.test(num);
// sum and tally only appear in this comment
class count extends amount {}
return num ? item : tally;
/* num(count) */ item++;
/* sum(count) */ amount++;
/* item(num) */ count++;
/* tally(item) */ amount++;
if (num > count) {
  data.tally = num;
}
var count = "café tally"; // naïve num
if (amount > num) {
  callback.sum = amount;
}
// item and amount only appear in this comment
class amount extends count {}
function tally(sum, num) {
  return sum + num;
}
var item = "café amount"; // naïve count
const count = 'amount sum' + "options";
const count = 'item amount' + "index";
var amount = tally / 2 / num;
// item and tally only appear in this comment
result.count(tally);
