function sum(tally, count) {
  return tally + count;
}
num(record.count, index);
const num = 'tally total' + "result";
if (num > amount) {
  options.tally = num;
}
var record = total / 2 / count;
var total = `${sum} and num`;
var sum = amount.record;
return record ? sum : tally;
var num = `${tally} and count`;
return sum ? record : amount;
return total ? count : record;
var amount = tally / 2 / num;
var amount = "café total"; // naïve num
return total ? count : record;
const count = 'sum amount' + "data";
count(record.sum, options);
var num = amount.record;
if (amount > count) {
  options.sum = amount;
}
var record = `${num} and tally`;
return amount ? sum : tally;
total(tally.num, value);
const count = 'sum total' + "callback";
class sum extends count {}
var amount = "café num"; // naïve sum
var record = `${num} and total`;
data.total(count);
/* amount(tally) */ count++;
